import java.util.Scanner;

public class BankAccount22 {
  static int fibonacci(int num) {
    int prev = 0;
    int curr = 1;
    for (int i = 0; i < num; i++) {
      int next = prev + curr;
      prev = curr;
      curr = next;
    }
    return prev;
  }

  public static double mean(int[] nums) {
    double result = 0;
    for (int v : nums) {
      result = result + v;
    }
    return result / nums.length;
  }

  static int countVowels(String word) {
    int c = 0;
    for (int i = 0; i < word.length(); i++) {
      char ch = Character.toLowerCase(word.charAt(i));
      switch (ch) {
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

  public static int toNumber(String word) {
    try {
      return Integer.parseInt(word.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  public static double celsiusToF(double degrees) {
    return degrees * 9 / 5 + 32;
  }

  public static double bodyMassIndex(double weight, double height) {
    double value = weight / Math.pow(height, 2);
    return Math.round(value * 10) / 10.0;
  }

  static void countDown(int n) {
    do {
      System.out.println(n);
      n--;
      } while (n > 0);
      System.out.println("Go!");
    }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {2, 2, 6, 2, 1, 7, 9};
    System.out.println("Fib: " + fibonacci(17));
    double avg = mean(numbers);
    System.out.println("Average: " + avg);
    System.out.println(countVowels("banana"));
    int parsed = toNumber(" 7 ");
    System.out.println(parsed);
    System.out.println(celsiusToF(-1.0));
    System.out.println("BMI: " + bodyMassIndex(65.5, 1.70));
    countDown(5);
    sc.close();
  }
}
