import java.util.Random;

/**
 * Practice176 program.
 */
public class Practice176
{
    static int countVowels(String text)
    {
        int c = 0;
        for (int j = 0; j < text.length(); j++)
        {
            char ch = Character.toLowerCase(text.charAt(j));
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

    static int[] randomFill(int size)
    {
        Random rand = new Random(42);
        int[] arr = new int[size];
        for (int j = 0; j < size; j++)
        {
            arr[j] = rand.nextInt(100);
        }
        return arr;
    }

    public static int digitSum(int num)
    {
        int total = 0;
        while (num > 0)
        {
            total += num % 10;
            num /= 10;
        }
        return total;
    }

    public static boolean isPalindrome(String text)
    {
        int left = 0;
        int right = text.length() - 1;
        while (left < right)
        {
            if (text.charAt(left) != text.charAt(right))
            {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    static void countDown(int remaining)
    {
        do
        {
            System.out.println(remaining);
            remaining--;
            } while (remaining > 0);
            System.out.println("Go!");
        }

    public static long fact(int num)
    {
        if (num <= 1)
        {
            return 1;
        }
        return num * fact(num - 1);
    }

    public static int addAll(int[] arr)
    {
        int total = 0;
        for (int j = 0; j < arr.length; j++)
        {
            total += arr[j];
        }
        return total;
    }

    public static double toFahrenheit(double c)
    {
        return c * 9 / 5 + 32;
    }

    public static void main(String[] args)
    {
        int[] numbers = {2, 3, 5, 2, 2};
        System.out.println(countVowels("programming"));
        int[] random = randomFill(6);
        System.out.println(random.length);
        System.out.println("Digits: " + digitSum(30789));
        System.out.println(isPalindrome("noon"));
        countDown(3);
        System.out.println(fact(9));
        System.out.println("Sum: " + addAll(numbers));
        System.out.println(toFahrenheit(13.0));
    }
}
