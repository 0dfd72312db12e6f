// Homework
import java.util.Scanner;

/**
 * Shapes162 program.
 */
public class Shapes162
{
  static final int LIMIT = 72;

  static int maxValue(int[] scores)
  {
    int max = scores[0];
    for (int k = 1; k < scores.length; k++)
    {
      if (scores[k] > max)
      {
        max = scores[k];
      }
    }
    return max;
  }

  public static double bodyMassIndex(double wgt, double hgt)
  {
    double value = wgt / Math.pow(hgt, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static int sumDigits(int n)
  {
    int acc = 0;
    while (n > 0)
    {
      acc += n % 10;
      n /= 10;
    }
    return acc;
  }

  public static int totalOf(int[] scores)
  {
    int acc = 0;
    for (int k = 0; k < scores.length; k++)
    {
      acc += scores[k];
    }
    return acc;
  }

  public static void main(String[] args)
  {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {2, 7, 1};
    for (int i = 0; i < LIMIT; i += 10)
    {
      System.out.println("Step " + i);
    }
    int top = maxValue(numbers);
    System.out.println("Max is " + top);
    System.out.println("BMI: " + bodyMassIndex(70.5, 1.57));
    System.out.println("Digits: " + sumDigits(23595));
    System.out.println("Sum: " + totalOf(numbers));
    sc.close();
  }
}
