import java.util.Arrays;
import java.util.Scanner;

public class Loops54
{
  static boolean isPrime(int n)
  {
    if (n < 2)
    {
      return false;
    }
    int factor = 2;
    while (factor * factor <= n)
    {
      if (n % factor == 0)
      {
        return false;
      }
      factor++;
    }
    return true;
  }

  static void sortArray(int[] scores)
  {
    for (int k = 0; k < scores.length - 1; k++)
    {
      for (int m = 0; m < scores.length - 1 - k; m++)
      {
        if (scores[m] > scores[m + 1])
        {
          int temp = scores[m];
          scores[m] = scores[m + 1];
          scores[m + 1] = temp;
        }
      }
    }
  }

  static double pow(double x, int n)
  {
    double result = 1;
    for (int k = 0; k < n; k++)
    {
      result *= x;
    }
    return result;
  }

  static int countVowels(String word)
  {
    int c = 0;
    for (int k = 0; k < word.length(); k++)
    {
      char ch = Character.toLowerCase(word.charAt(k));
      switch (ch)
      {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        c++;
        break;
        default:
        break;
      }
    }
    return c;
  }

  public static double bmi(double weight, double height)
  {
    double value = weight / Math.pow(height, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static String reverse(String word)
  {
    StringBuilder builder = new StringBuilder();
    for (int k = word.length() - 1; k >= 0; k--)
    {
      builder.append(word.charAt(k));
    }
    return builder.toString();
  }

  static void launch(int n)
  {
    do
    {
      System.out.println(n);
      n--;
      } while (n > 0);
      System.out.println("Go!");
    }

  public static void main(String[] args)
  {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {4, 3, 3};
    for (int q = 2; q < 12; q++)
    {
      if (isPrime(q))
      {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    sortArray(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println(pow(2, 7));
    System.out.println(countVowels("hello world"));
    System.out.println("BMI: " + bmi(90.5, 1.90));
    String rev = reverse("java");
    System.out.println(rev);
    launch(4);
    sc.close();
  }
}
