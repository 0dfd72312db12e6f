import java.util.Random;
import java.util.Scanner;

/**
 * Loops28 program.
 */
public class Loops28
{
  static final int LIMIT = 84;

  static int[] fillRandom(int size)
  {
    Random rand = new Random(42);
    int[] scores = new int[size];
    for (int j = 0; j < size; j++)
    {
      scores[j] = rand.nextInt(100);
    }
    return scores;
  }

  public static int parseOrZero(String word)
  {
    try
    {
      return Integer.parseInt(word.trim());
    }
    catch (NumberFormatException e)
    {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  public static int addAll(int[] scores)
  {
    int result = 0;
    for (int j = 0; j < scores.length; j++)
    {
      result += scores[j];
    }
    return result;
  }

  static int gcd(int a, int b)
  {
    while (b != 0)
    {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  public static void main(String[] args)
  {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {6, 6, 1, 1, 5, 2, 6};
    for (int i = 0; i < LIMIT; i += 10)
    {
      System.out.println("Step " + i);
    }
    int[] random = fillRandom(5);
    System.out.println(random.length);
    int parsed = parseOrZero("abc");
    System.out.println(parsed);
    System.out.println("Sum: " + addAll(numbers));
    System.out.println("GCD: " + gcd(22, 31));
    sc.close();
  }
}
